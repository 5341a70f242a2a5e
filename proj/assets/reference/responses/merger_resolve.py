class AssessmentSystem:
    def __init__(self):
        self.students = {}

    def add_student(self, name, grade, major):
        self.students[name] = {'name': name, 'grade': grade, 'major': major, 'courses': {}}

    def add_course_score(self, name, course, score):
        if name in self.students:
            self.students[name]['courses'][course] = score

    def get_gpa(self, name):
        if name not in self.students:
            return None
        courses = self.students[name]['courses']
        if not courses:
            return None
        return sum(courses.values()) / len(courses)

    def get_all_students_with_fail_course(self):
        failing = []
        for name, student in self.students.items():
            if any(score <= 60 for score in student['courses'].values()):
                failing.append(name)
        return failing

    def get_course_average(self, course):
        total, count = 0, 0
        for student in self.students.values():
            if course in student['courses']:
                total += student['courses'][course]
                count += 1
        if count == 0:
            return None
        return total / count

    def get_top_student(self):
        best, best_gpa = None, None
        for name in self.students:
            gpa = self.get_gpa(name)
            if gpa is not None and (best_gpa is None or gpa > best_gpa):
                best, best_gpa = name, gpa
        return best
