class AssessmentSystem:
    def __init__(self):
        self.students = {}

    def add_student(self, name, grade, major):
        self.students[name] = {'name': name, 'grade': grade, 'major': major, 'courses': {}}

    def add_course_score(self, name, course, score):
        if name in self.students:
            self.students[name]['courses'][course] = score

    def get_gpa(self, name):
        student = self.students.get(name)
        if not student or not student['courses']:
            return None
        scores = list(student['courses'].values())
        return sum(scores) / len(scores)

    def get_all_students_with_fail_course(self):
        failing = []
        for name, student in self.students.items():
            if any(score <= 60 for score in student['courses'].values()):
                failing.append(name)
        return failing

    def get_course_average(self, course):
        scores = [s['courses'][course] for s in self.students.values() if course in s['courses']]
        if not scores:
            return None
        return sum(scores) / len(scores)

    def get_top_student(self):
        best, best_gpa = None, -1
        for name in self.students:
            gpa = self.get_gpa(name)
            if gpa is not None and gpa > best_gpa:
                best, best_gpa = name, gpa
        return best
