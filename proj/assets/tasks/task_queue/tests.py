import unittest


class TaskQueueTest(unittest.TestCase):
    def setUp(self):
        self.queue = TaskQueue()
        self.queue.push('build', 1)
        self.queue.push('test', 2)
        self.queue.push('deploy', 1)

    def test_push_state(self):
        queue = TaskQueue()
        queue.push('build', 1)
        self.assertEqual(queue.tasks, [['build', 1]])

    def test_size(self):
        self.assertEqual(self.queue.size(), 3)

    def test_pop_order(self):
        self.assertEqual(self.queue.pop_next(), 'build')
        self.assertEqual(self.queue.pop_next(), 'test')

    def test_pop_empty(self):
        self.assertIsNone(TaskQueue().pop_next())

    def test_peek(self):
        self.assertEqual(self.queue.peek(), 'build')
        self.assertEqual(self.queue.size(), 3)

    def test_peek_empty(self):
        self.assertIsNone(TaskQueue().peek())

    def test_names_with_priority(self):
        self.assertEqual(self.queue.names_with_priority(1), ['build', 'deploy'])

    def test_names_with_unknown_priority(self):
        self.assertEqual(self.queue.names_with_priority(9), [])

    def test_pop_then_push(self):
        self.queue.pop_next()
        self.queue.push('notify', 3)
        self.assertEqual(self.queue.tasks[-1], ['notify', 3])

    def test_drain(self):
        names = []
        while self.queue.size():
            names.append(self.queue.pop_next())
        self.assertEqual(names, ['build', 'test', 'deploy'])


if __name__ == '__main__':
    unittest.main()
