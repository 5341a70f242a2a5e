class Inventory:
    """Stock levels for a small shop."""

    def __init__(self):
        """Start with an empty stock."""
        self.items = {}

    def add_item(self, name, quantity):
        """
        Put units of an item into stock.
        Quantities are kept in the self.items dict, keyed by item name.
        :param name: str, item name
        :param quantity: int, units to add
        >>> inv.add_item('apple', 3)
        >>> inv.items
        {'apple': 3}
        """

    def remove_item(self, name, quantity):
        """
        Take units out of stock and report success.
        Return False when the item is missing or has fewer than quantity units.
        :return: bool
        """

    def get_quantity(self, name):
        """
        Look up the units in stock for one item.
        :return: int, 0 when the item is missing
        """

    def low_stock(self, threshold):
        """
        Name the items whose quantity is below threshold, sorted.
        :return: list of str
        """

    def total_units(self):
        """Sum the units across all items."""
