class AssessmentSystem:
    def __init__(self):
        self.students = []
        self.courses = []
        self.scores = []

    def add_student(self, name, grade, major):
        self.students.append({'name': name, 'grade': grade, 'major': major})

    def add_course_score(self, name, course, score):
        if course not in self.courses:
            self.courses.append(course)
        self.scores.append({'student_id': name, 'course_id': course, 'score': score})

    def get_gpa(self, name):
        student_scores = [s['score'] for s in self.scores if s['student_id'] == name]
        if not student_scores:
            return 0.0
        return sum(student_scores) / len(student_scores)

    def get_all_students_with_fail_course(self):
        failing = []
        for s in self.scores:
            if s['score'] < 60 and s['student_id'] not in failing:
                failing.append(s['student_id'])
        return failing

    def get_course_average(self, course):
        course_scores = [s['score'] for s in self.scores if s['course_id'] == course]
        if not course_scores:
            return 0.0
        return sum(course_scores) / len(course_scores)

    def get_top_student(self):
        if not self.scores:
            return None
        names = []
        for s in self.scores:
            if s['student_id'] not in names:
                names.append(s['student_id'])
        best = max(names, key=self.get_gpa)
        for student in self.students:
            if student['name'] == best:
                return student
        return None
