class Unknown:
    def __init__(self):
        self.students = {}          # <-- DICT
        self.courses = {}           # <-- DICT
        self.scores = {}            # <-- DICT (tuple keys)

    def add_course_score(self, student_id,
                         course_id, score):
        self.scores[(student_id, course_id)] = score

    def get_all_students_with_fail_course(self,
            failing_threshold=60):
        failing = {}
        for (sid, cid), score in self.scores.items():
            if score < failing_threshold:
                if sid not in failing:
                    failing[sid] = []
                failing[sid].append(cid)
        return failing

    def get_top_student(self):
        if not self.scores:
            return None
        totals, counts = {}, {}
        for (sid, cid), score in self.scores.items():
            totals[sid] = totals.get(sid, 0) + score
            counts[sid] = counts.get(sid, 0) + 1
        best, best_avg = None, -1
        for sid in totals:
            avg = totals[sid] / counts[sid]
            if avg > best_avg:
                best_avg, best = avg, sid
        return best

    # Stubs for collaborator's methods
    def add_student(self): pass
    def get_gpa(self): pass
    def get_course_average(self): pass
