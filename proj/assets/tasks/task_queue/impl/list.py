class TaskQueue:
    def __init__(self):
        self.tasks = []

    def push(self, name, priority):
        self.tasks.append([name, priority])

    def pop_next(self):
        if not self.tasks:
            return None
        return self.tasks.pop(0)[0]

    def peek(self):
        if not self.tasks:
            return None
        return self.tasks[0][0]

    def size(self):
        return len(self.tasks)

    def names_with_priority(self, priority):
        return [name for name, p in self.tasks if p == priority]
