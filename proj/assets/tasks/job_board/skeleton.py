class JobBoard:
    """A job board that keeps postings in the order they were published."""

    def __init__(self):
        """Start with no postings."""
        self.job_listings = []

    def post_job(self, title, company, skills):
        """
        Publish a new posting.
        Append a posting dict to the self.job_listings list.
        :param title: str, job title
        :param company: str, company name
        :param skills: list of str, required skills
        >>> board.post_job('Engineer', 'Acme', ['python'])
        >>> board.job_listings
        [{'title': 'Engineer', 'company': 'Acme', 'skills': ['python']}]
        """

    def remove_job(self, title, company):
        """
        Withdraw the posting with this title and company.
        Nothing happens when the posting is not found.
        """

    def search_jobs(self, skill):
        """
        Find the titles of postings that require the skill, oldest first.
        :return: list of str
        """

    def count_jobs(self):
        """Count the open postings."""

    def companies(self):
        """
        Name the companies with open postings, in posting order, each once.
        :return: list of str
        """
