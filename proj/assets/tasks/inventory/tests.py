import unittest


class InventoryTest(unittest.TestCase):
    def setUp(self):
        self.inv = Inventory()
        self.inv.add_item('apple', 5)
        self.inv.add_item('pear', 2)

    def test_add_item_state(self):
        inv = Inventory()
        inv.add_item('apple', 3)
        self.assertEqual(inv.items, {'apple': 3})

    def test_add_item_accumulates(self):
        self.inv.add_item('apple', 4)
        self.assertEqual(self.inv.items['apple'], 9)

    def test_get_quantity(self):
        self.assertEqual(self.inv.get_quantity('pear'), 2)

    def test_get_quantity_missing(self):
        self.assertEqual(self.inv.get_quantity('plum'), 0)

    def test_remove_item(self):
        self.assertTrue(self.inv.remove_item('apple', 2))
        self.assertEqual(self.inv.get_quantity('apple'), 3)

    def test_remove_too_many(self):
        self.assertFalse(self.inv.remove_item('pear', 3))
        self.assertEqual(self.inv.get_quantity('pear'), 2)

    def test_remove_missing(self):
        self.assertFalse(self.inv.remove_item('plum', 1))

    def test_low_stock(self):
        self.assertEqual(self.inv.low_stock(3), ['pear'])

    def test_low_stock_sorted(self):
        self.inv.add_item('banana', 1)
        self.assertEqual(self.inv.low_stock(10), ['apple', 'banana', 'pear'])

    def test_total_units(self):
        self.assertEqual(self.inv.total_units(), 7)


if __name__ == '__main__':
    unittest.main()
