import unittest


class JobBoardTest(unittest.TestCase):
    def setUp(self):
        self.board = JobBoard()
        self.board.post_job('Engineer', 'Acme', ['python', 'sql'])
        self.board.post_job('Analyst', 'Globex', ['sql'])
        self.board.post_job('Designer', 'Acme', ['figma'])

    def test_post_job_state(self):
        board = JobBoard()
        board.post_job('Engineer', 'Acme', ['python'])
        self.assertEqual(board.job_listings, [{'title': 'Engineer', 'company': 'Acme', 'skills': ['python']}])

    def test_postings_keep_order(self):
        self.assertEqual([j['title'] for j in self.board.job_listings], ['Engineer', 'Analyst', 'Designer'])

    def test_count_jobs(self):
        self.assertEqual(self.board.count_jobs(), 3)

    def test_remove_job(self):
        self.board.remove_job('Analyst', 'Globex')
        self.assertEqual(self.board.count_jobs(), 2)
        self.assertEqual(self.board.search_jobs('sql'), ['Engineer'])

    def test_remove_missing_job(self):
        self.board.remove_job('Pilot', 'Acme')
        self.assertEqual(self.board.count_jobs(), 3)

    def test_search_jobs(self):
        self.assertEqual(self.board.search_jobs('sql'), ['Engineer', 'Analyst'])

    def test_search_no_match(self):
        self.assertEqual(self.board.search_jobs('rust'), [])

    def test_companies(self):
        self.assertEqual(self.board.companies(), ['Acme', 'Globex'])

    def test_companies_after_remove(self):
        self.board.remove_job('Analyst', 'Globex')
        self.assertEqual(self.board.companies(), ['Acme'])

    def test_listing_record(self):
        self.assertEqual(self.board.job_listings[0]['skills'], ['python', 'sql'])


if __name__ == '__main__':
    unittest.main()
