class AssessmentSystem:
    def __init__(self):
        self.students = {}
        self.courses = []
        self.scores = []

    def add_student(self, student_id, name, major=None):
        self.students[student_id] = {'student_id': student_id, 'name': name}

    def add_course_score(self, student_id, course_id, score):
        if course_id not in self.courses:
            self.courses.append(course_id)
        self.scores[(student_id, course_id)] = score

    def get_gpa(self, student_id):
        student_scores = [s for (sid, cid), s in self.scores if sid == student_id]
        if not student_scores:
            return 0.0
        return sum(student_scores) / len(student_scores)

    def get_all_students_with_fail_course(self, failing_threshold=60):
        failing = {}
        for (sid, cid), score in self.scores:
            if score < failing_threshold:
                failing.setdefault(sid, []).append(cid)
        return failing

    def get_course_average(self, course_id):
        course_scores = [s for (sid, cid), s in self.scores if cid == course_id]
        if not course_scores:
            return 0.0
        return sum(course_scores) / len(course_scores)

    def get_top_student(self):
        totals = {}
        for (sid, cid), score in self.scores:
            totals.setdefault(sid, []).append(score)
        return max(totals, key=lambda sid: sum(totals[sid]) / len(totals[sid]))
