class BankAccount:
    """A single-owner account that records every transaction."""

    def __init__(self, owner, balance=0):
        pass

    def deposit(self, amount):
        """
        Add money to the account.
        Each deposit is appended to the self.transactions list as ('deposit', amount).
        Raise ValueError for an invalid amount of 0 or less.
        """
        pass

    def withdraw(self, amount):
        """
        Take money out of the account and report success.
        Return False without changes when the balance is below amount.
        :return: bool
        """
        pass

    def get_balance(self):
        """Report the current balance."""
        pass

    def history(self):
        """
        Give back the recorded transactions, oldest first.
        :return: list of (kind, amount) tuples
        """
        pass

    def count_deposits(self):
        """Count the deposits made so far."""
        pass
