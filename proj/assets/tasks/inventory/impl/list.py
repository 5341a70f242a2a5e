class Inventory:
    def __init__(self):
        self.items = []

    def add_item(self, name, quantity):
        for item in self.items:
            if item['name'] == name:
                item['quantity'] += quantity
                return
        self.items.append({'name': name, 'quantity': quantity})

    def remove_item(self, name, quantity):
        for item in self.items:
            if item['name'] == name and item['quantity'] >= quantity:
                item['quantity'] -= quantity
                return True
        return False

    def get_quantity(self, name):
        for item in self.items:
            if item['name'] == name:
                return item['quantity']
        return 0

    def low_stock(self, threshold):
        return sorted(item['name'] for item in self.items if item['quantity'] < threshold)

    def total_units(self):
        return sum(item['quantity'] for item in self.items)
