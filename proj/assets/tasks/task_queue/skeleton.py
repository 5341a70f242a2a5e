class TaskQueue:
    """First-in first-out queue of named tasks with priorities."""

    def __init__(self):
        """Start with no queued tasks."""
        self.tasks = []

    def push(self, name, priority):
        """
        Queue a task behind the ones already waiting.
        Entries are appended to the self.tasks list as [name, priority] pairs.
        :param name: str, task name
        :param priority: int, task priority
        >>> queue.push('build', 1)
        >>> queue.tasks
        [['build', 1]]
        """

    def pop_next(self):
        """
        Remove the oldest task and give back its name.
        Return None when the queue is empty.
        """

    def peek(self):
        """
        Give back the name of the oldest task without removing it.
        Return None when the queue is empty.
        """

    def size(self):
        """Count the queued tasks."""

    def names_with_priority(self, priority):
        """
        Collect the names of queued tasks with this priority, oldest first.
        :return: list of str
        """
