class LibraryCatalog:
    """Books on the shelf and the loans currently out."""

    def __init__(self):
        """Start with no books and no loans."""
        self.books = {}
        self.loans = []

    def add_book(self, isbn, title):
        """
        Register a book.
        Titles are stored in the self.books dict, keyed by isbn.
        :param isbn: str, book identifier
        :param title: str, book title
        >>> catalog.add_book('111', 'Dune')
        >>> catalog.books
        {'111': 'Dune'}
        """

    def lend(self, isbn, member):
        """
        Lend a book to a member and report success.
        Return False when the book is missing or already on loan.
        :return: bool
        """

    def return_book(self, isbn):
        """
        Close the loan of a book and report success.
        Return False when the book is not found among the loans.
        :return: bool
        """

    def is_available(self, isbn):
        """Tell whether the book is registered and on the shelf."""

    def loans_for(self, member):
        """
        Collect the isbns a member has on loan, in lending order.
        :return: list of str
        """

    def titles(self):
        """
        Collect every registered title, sorted.
        :return: list of str
        """
