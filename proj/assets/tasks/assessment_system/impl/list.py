class AssessmentSystem:
    def __init__(self):
        self.students = []

    def add_student(self, name, grade, major):
        self.students.append({'name': name, 'grade': grade, 'major': major, 'courses': {}})

    def add_course_score(self, name, course, score):
        for student in self.students:
            if student['name'] == name:
                student['courses'][course] = score

    def get_gpa(self, name):
        for student in self.students:
            if student['name'] == name and student['courses']:
                scores = student['courses'].values()
                return sum(scores) / len(scores)
        return None

    def get_all_students_with_fail_course(self):
        failing = []
        for student in self.students:
            if any(score < 60 for score in student['courses'].values()):
                failing.append(student['name'])
        return failing

    def get_course_average(self, course):
        scores = [s['courses'][course] for s in self.students if course in s['courses']]
        if not scores:
            return None
        return sum(scores) / len(scores)

    def get_top_student(self):
        top, best = None, None
        for student in self.students:
            gpa = self.get_gpa(student['name'])
            if gpa is not None and (best is None or gpa > best):
                top, best = student['name'], gpa
        return top
