class TaskQueue:
    def __init__(self):
        self.tasks = {}

    def push(self, name, priority):
        key = max(self.tasks.keys(), default=-1) + 1
        self.tasks[key] = {'name': name, 'priority': priority}

    def pop_next(self):
        if not self.tasks:
            return None
        oldest = min(self.tasks.keys())
        return self.tasks.pop(oldest)['name']

    def peek(self):
        if not self.tasks:
            return None
        return self.tasks[min(self.tasks.keys())]['name']

    def size(self):
        return len(self.tasks.keys())

    def names_with_priority(self, priority):
        return [t['name'] for key, t in sorted(self.tasks.items()) if t['priority'] == priority]
