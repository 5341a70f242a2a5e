import unittest


class LibraryCatalogTest(unittest.TestCase):
    def setUp(self):
        self.catalog = LibraryCatalog()
        self.catalog.add_book('111', 'Dune')
        self.catalog.add_book('222', 'Emma')
        self.catalog.add_book('333', 'Beloved')

    def test_add_book_state(self):
        catalog = LibraryCatalog()
        catalog.add_book('111', 'Dune')
        self.assertEqual(catalog.books, {'111': 'Dune'})

    def test_titles(self):
        self.assertEqual(self.catalog.titles(), ['Beloved', 'Dune', 'Emma'])

    def test_available_initially(self):
        self.assertTrue(self.catalog.is_available('111'))

    def test_unknown_not_available(self):
        self.assertFalse(self.catalog.is_available('999'))

    def test_lend(self):
        self.assertTrue(self.catalog.lend('111', 'ann'))
        self.assertFalse(self.catalog.is_available('111'))

    def test_lend_state(self):
        self.catalog.lend('222', 'bob')
        self.assertEqual(self.catalog.loans, [{'isbn': '222', 'member': 'bob'}])

    def test_lend_twice(self):
        self.catalog.lend('111', 'ann')
        self.assertFalse(self.catalog.lend('111', 'bob'))

    def test_lend_missing(self):
        self.assertFalse(self.catalog.lend('999', 'ann'))

    def test_return_book(self):
        self.catalog.lend('111', 'ann')
        self.assertTrue(self.catalog.return_book('111'))
        self.assertTrue(self.catalog.is_available('111'))

    def test_return_not_lent(self):
        self.assertFalse(self.catalog.return_book('111'))

    def test_loans_for(self):
        self.catalog.lend('333', 'ann')
        self.catalog.lend('222', 'bob')
        self.catalog.lend('111', 'ann')
        self.assertEqual(self.catalog.loans_for('ann'), ['333', '111'])

    def test_loans_for_nobody(self):
        self.assertEqual(self.catalog.loans_for('zed'), [])


if __name__ == '__main__':
    unittest.main()
