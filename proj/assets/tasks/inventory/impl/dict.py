class Inventory:
    def __init__(self):
        self.items = {}

    def add_item(self, name, quantity):
        self.items[name] = self.items.get(name, 0) + quantity

    def remove_item(self, name, quantity):
        if self.items.get(name, 0) < quantity:
            return False
        self.items[name] -= quantity
        return True

    def get_quantity(self, name):
        return self.items.get(name, 0)

    def low_stock(self, threshold):
        return sorted(name for name, qty in self.items.items() if qty < threshold)

    def total_units(self):
        return sum(self.items.values())
