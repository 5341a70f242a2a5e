class AssessmentSystem:
    def __init__(self):
        self.students = {}

    def add_student(self, name, grade, major):
        self.students[name] = {'name': name, 'grade': grade, 'major': major, 'courses': {}}

    def add_course_score(self, name, course, score):
        if name in self.students:
            self.students[name]['courses'][course] = score

    def get_gpa(self, name):
        if name in self.students and self.students[name]['courses']:
            scores = self.students[name]['courses'].values()
            return sum(scores) / len(scores)
        return None

    def get_all_students_with_fail_course(self):
        failing = []
        for name, student in self.students.items():
            if any(score < 60 for score in student['courses'].values()):
                failing.append(name)
        return failing

    def get_course_average(self, course):
        scores = [s['courses'][course] for s in self.students.values() if course in s['courses']]
        if not scores:
            return None
        return sum(scores) / len(scores)

    def get_top_student(self):
        top, best = None, None
        for name in self.students:
            gpa = self.get_gpa(name)
            if gpa is not None and (best is None or gpa > best):
                top, best = name, gpa
        return top
