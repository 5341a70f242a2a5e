import unittest


class BankAccountTest(unittest.TestCase):
    def setUp(self):
        self.account = BankAccount('ann', 100)

    def test_opening_balance(self):
        self.assertEqual(self.account.get_balance(), 100)

    def test_default_balance(self):
        self.assertEqual(BankAccount('bob').get_balance(), 0)

    def test_deposit(self):
        self.account.deposit(50)
        self.assertEqual(self.account.get_balance(), 150)

    def test_deposit_state(self):
        self.account.deposit(50)
        self.assertEqual(self.account.transactions, [('deposit', 50)])

    def test_invalid_deposit(self):
        with self.assertRaises(ValueError):
            self.account.deposit(0)

    def test_withdraw(self):
        self.assertTrue(self.account.withdraw(30))
        self.assertEqual(self.account.get_balance(), 70)

    def test_withdraw_too_much(self):
        self.assertFalse(self.account.withdraw(500))
        self.assertEqual(self.account.get_balance(), 100)

    def test_history(self):
        self.account.deposit(20)
        self.account.withdraw(10)
        self.assertEqual(self.account.history(), [('deposit', 20), ('withdraw', 10)])

    def test_count_deposits(self):
        self.account.deposit(20)
        self.account.deposit(5)
        self.account.withdraw(10)
        self.assertEqual(self.account.count_deposits(), 2)

    def test_history_empty(self):
        self.assertEqual(self.account.history(), [])


if __name__ == '__main__':
    unittest.main()
