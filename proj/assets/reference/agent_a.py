class Unknown:
    def __init__(self):
        self.students = []          # <-- LIST
        self.courses = []           # <-- LIST
        self.scores = []            # <-- LIST

    def add_student(self, student_id, name):
        student = {'student_id': student_id,
                   'name': name}
        self.students.append(student)  # list.append()

    def get_gpa(self, student_id):
        student_scores = [s for s in self.scores
                          if s['student_id'] == student_id]
        if not student_scores:
            return 0.0
        return sum(s['score'] for s in student_scores) \
               / len(student_scores)

    def get_course_average(self, course_id):
        course_scores = [s for s in self.scores
                         if s['course_id'] == course_id]
        if not course_scores:
            return 0.0
        return sum(s['score'] for s in course_scores) \
               / len(course_scores)

    # Stubs for collaborator's methods
    def add_course_score(self): pass
    def get_all_students_with_fail_course(self): pass
    def get_top_student(self): pass
