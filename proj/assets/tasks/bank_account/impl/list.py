class BankAccount:
    def __init__(self, owner, balance=0):
        self.owner = owner
        self.balance = balance
        self.transactions = []

    def deposit(self, amount):
        if amount <= 0:
            raise ValueError('invalid amount')
        self.balance += amount
        self.transactions.append(('deposit', amount))

    def withdraw(self, amount):
        if amount > self.balance:
            return False
        self.balance -= amount
        self.transactions.append(('withdraw', amount))
        return True

    def get_balance(self):
        return self.balance

    def history(self):
        return list(self.transactions)

    def count_deposits(self):
        return sum(1 for kind, amount in self.transactions if kind == 'deposit')
