class AssessmentSystem:
    def __init__(self):
        """Initialize the students dict."""
        self.students = {}

    def add_student(self, name, grade, major):
        """
        Add a new student into self.students dict
        :param name: str, student name
        :param grade: int, student grade
        :param major: str, student major
        >>> system.add_student('student 1', 3, 'SE')
        >>> system.students
        {'student 1': {'name': 'student 1',
          'grade': 3, 'major': 'SE', 'courses': {}}}
        """

    def add_course_score(self, name, course, score):
        """
        Add score of specific course for student
        in self.students
        >>> system.add_course_score('student 1', 'math', 94)
        >>> system.students
        {'student 1': {'name': 'student 1', 'grade': 3,
          'major': 'SE', 'courses': {'math': 94}}}
        """

    def get_gpa(self, name):
        """Get average grade of one student.
        :return: float or None"""

    def get_all_students_with_fail_course(self):
        """Get all students who have any score below 60
        :return: list of str, student name"""

    def get_course_average(self, course):
        """Get average score of a specific course.
        :return: float or None"""

    def get_top_student(self):
        """Find student with highest GPA.
        :return: str, name of student"""
