class JobBoard:
    def __init__(self):
        self.job_listings = {}

    def post_job(self, title, company, skills):
        self.job_listings[(title, company)] = {'title': title, 'company': company, 'skills': skills}

    def remove_job(self, title, company):
        self.job_listings.pop((title, company), None)

    def search_jobs(self, skill):
        return [key[0] for key, job in self.job_listings.items() if skill in job['skills']]

    def count_jobs(self):
        return len(self.job_listings.keys())

    def companies(self):
        names = {}
        for title, company in self.job_listings.keys():
            names[company] = True
        return list(names.keys())
