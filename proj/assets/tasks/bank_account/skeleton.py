class BankAccount:
    """A single-owner account that records every transaction."""

    def __init__(self, owner, balance=0):
        """Open the account for an owner with an opening balance."""
        self.owner = owner
        self.balance = balance
        self.transactions = []

    def deposit(self, amount):
        """
        Add money to the account.
        Each deposit is appended to the self.transactions list as ('deposit', amount).
        Raise ValueError for an invalid amount of 0 or less.
        >>> account.deposit(50)
        >>> account.transactions
        [('deposit', 50)]
        """

    def withdraw(self, amount):
        """
        Take money out of the account and report success.
        Return False without changes when the balance is below amount.
        :return: bool
        """

    def get_balance(self):
        """Report the current balance."""

    def history(self):
        """
        Give back the recorded transactions, oldest first.
        :return: list of (kind, amount) tuples
        """

    def count_deposits(self):
        """Count the deposits made so far."""
