class LibraryCatalog:
    def __init__(self):
        self.books = {}
        self.loans = {}

    def add_book(self, isbn, title):
        self.books[isbn] = title

    def lend(self, isbn, member):
        if isbn not in self.books or isbn in self.loans:
            return False
        self.loans[isbn] = member
        return True

    def return_book(self, isbn):
        if isbn not in self.loans:
            return False
        del self.loans[isbn]
        return True

    def is_available(self, isbn):
        return isbn in self.books and isbn not in self.loans

    def loans_for(self, member):
        return [isbn for isbn, who in self.loans.items() if who == member]

    def titles(self):
        return sorted(self.books.values())
