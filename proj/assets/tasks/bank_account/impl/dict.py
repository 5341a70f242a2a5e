class BankAccount:
    def __init__(self, owner, balance=0):
        self.owner = owner
        self.balance = balance
        self.transactions = {}

    def deposit(self, amount):
        if amount <= 0:
            raise ValueError('invalid amount')
        self.balance += amount
        self.transactions[len(self.transactions)] = ('deposit', amount)

    def withdraw(self, amount):
        if amount > self.balance:
            return False
        self.balance -= amount
        self.transactions[len(self.transactions)] = ('withdraw', amount)
        return True

    def get_balance(self):
        return self.balance

    def history(self):
        return [self.transactions[i] for i in sorted(self.transactions.keys())]

    def count_deposits(self):
        return sum(1 for key, (kind, amount) in self.transactions.items() if kind == 'deposit')
