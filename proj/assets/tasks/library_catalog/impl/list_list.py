class LibraryCatalog:
    def __init__(self):
        self.books = []
        self.loans = []

    def add_book(self, isbn, title):
        self.books.append({'isbn': isbn, 'title': title})

    def lend(self, isbn, member):
        if all(b['isbn'] != isbn for b in self.books) or any(loan['isbn'] == isbn for loan in self.loans):
            return False
        self.loans.append({'isbn': isbn, 'member': member})
        return True

    def return_book(self, isbn):
        for loan in self.loans:
            if loan['isbn'] == isbn:
                self.loans.remove(loan)
                return True
        return False

    def is_available(self, isbn):
        registered = any(b['isbn'] == isbn for b in self.books)
        return registered and all(loan['isbn'] != isbn for loan in self.loans)

    def loans_for(self, member):
        return [loan['isbn'] for loan in self.loans if loan['member'] == member]

    def titles(self):
        return sorted(b['title'] for b in self.books)
