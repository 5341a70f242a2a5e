import unittest


class AssessmentSystemTestAddStudent(unittest.TestCase):
    def test_add_student(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        self.assertEqual(system.students,
                         {'Alice': {'name': 'Alice', 'grade': 3, 'major': 'Mathematics', 'courses': {}}})

    def test_add_two_students(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        self.assertEqual(set(system.students), {'Alice', 'Bob'})

    def test_add_student_record(self):
        system = AssessmentSystem()
        system.add_student('Bob', 2, 'Physics')
        self.assertEqual(system.students['Bob']['major'], 'Physics')

    def test_add_student_no_courses(self):
        system = AssessmentSystem()
        system.add_student('Carol', 1, 'Chemistry')
        self.assertEqual(system.students['Carol']['courses'], {})

    def test_add_student_count(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_student('Carol', 1, 'Chemistry')
        self.assertEqual(len(system.students), 3)


class AssessmentSystemTestAddCourseScore(unittest.TestCase):
    def test_add_course_score(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        self.assertEqual(system.students['Alice']['courses'], {'Math': 90})

    def test_add_two_course_scores(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Alice', 'Science', 80)
        self.assertEqual(system.students['Alice']['courses'], {'Math': 90, 'Science': 80})

    def test_overwrite_course_score(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Alice', 'Math', 70)
        self.assertEqual(system.students['Alice']['courses']['Math'], 70)

    def test_unknown_student_ignored(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Bob', 'Math', 90)
        self.assertEqual(list(system.students), ['Alice'])

    def test_course_score_reaches_gpa(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 88)
        self.assertEqual(system.get_gpa('Alice'), 88.0)

    def test_scores_are_per_student(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Bob', 'Math', 50)
        self.assertEqual(system.get_gpa('Alice'), 90.0)
        self.assertEqual(system.get_gpa('Bob'), 50.0)


class AssessmentSystemTestGetGPA(unittest.TestCase):
    def test_get_gpa(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Alice', 'Science', 80)
        self.assertEqual(system.get_gpa('Alice'), 85.0)

    def test_get_gpa_no_courses(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        self.assertIsNone(system.get_gpa('Alice'))

    def test_get_gpa_unknown_student(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        self.assertIsNone(system.get_gpa('Bob'))

    def test_get_gpa_three_courses(self):
        system = AssessmentSystem()
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Bob', 'Math', 70)
        system.add_course_score('Bob', 'Science', 80)
        system.add_course_score('Bob', 'Art', 90)
        self.assertAlmostEqual(system.get_gpa('Bob'), 80.0)

    def test_get_gpa_state_prepared(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.students['Alice']['courses'] = {'Math': 60, 'Art': 100}
        self.assertEqual(system.get_gpa('Alice'), 80.0)


class AssessmentSystemTestFailCourse(unittest.TestCase):
    def test_one_failing_student(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Bob', 'Math', 50)
        self.assertEqual(system.get_all_students_with_fail_course(), ['Bob'])

    def test_no_failing_students(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        self.assertEqual(system.get_all_students_with_fail_course(), [])

    def test_fail_listed_once(self):
        system = AssessmentSystem()
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Bob', 'Math', 40)
        system.add_course_score('Bob', 'Science', 30)
        self.assertEqual(system.get_all_students_with_fail_course(), ['Bob'])

    def test_score_sixty_passes(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 60)
        self.assertEqual(system.get_all_students_with_fail_course(), [])

    def test_students_without_courses(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        self.assertEqual(system.get_all_students_with_fail_course(), [])


class AssessmentSystemTestCourseAverage(unittest.TestCase):
    def test_course_average(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Bob', 'Math', 70)
        self.assertEqual(system.get_course_average('Math'), 80.0)

    def test_course_average_missing_course(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        self.assertIsNone(system.get_course_average('Art'))

    def test_course_average_single_score(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Science', 75)
        self.assertEqual(system.get_course_average('Science'), 75.0)

    def test_course_average_ignores_other_courses(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Alice', 'Art', 10)
        self.assertEqual(system.get_course_average('Math'), 90.0)

    def test_course_average_state_prepared(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.students['Alice']['courses'] = {'Math': 100}
        system.students['Bob']['courses'] = {'Math': 50}
        self.assertEqual(system.get_course_average('Math'), 75.0)


class AssessmentSystemTestTopStudent(unittest.TestCase):
    def test_top_student(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Alice', 'Math', 90)
        system.add_course_score('Bob', 'Math', 80)
        self.assertEqual(system.get_top_student(), 'Alice')

    def test_top_student_by_average(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Alice', 'Math', 100)
        system.add_course_score('Alice', 'Art', 50)
        system.add_course_score('Bob', 'Math', 80)
        self.assertEqual(system.get_top_student(), 'Bob')

    def test_top_student_without_scores(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        self.assertIsNone(system.get_top_student())

    def test_top_student_skips_unscored(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.add_course_score('Bob', 'Math', 40)
        self.assertEqual(system.get_top_student(), 'Bob')

    def test_top_student_state_prepared(self):
        system = AssessmentSystem()
        system.add_student('Alice', 3, 'Mathematics')
        system.add_student('Bob', 2, 'Physics')
        system.students['Bob']['courses'] = {'Math': 99}
        self.assertEqual(system.get_top_student(), 'Bob')


if __name__ == '__main__':
    unittest.main()
