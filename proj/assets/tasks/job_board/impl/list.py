class JobBoard:
    def __init__(self):
        self.job_listings = []

    def post_job(self, title, company, skills):
        self.job_listings.append({'title': title, 'company': company, 'skills': skills})

    def remove_job(self, title, company):
        self.job_listings = [j for j in self.job_listings
                             if not (j['title'] == title and j['company'] == company)]

    def search_jobs(self, skill):
        return [j['title'] for j in self.job_listings if skill in j['skills']]

    def count_jobs(self):
        return len(self.job_listings)

    def companies(self):
        names = []
        for job in self.job_listings:
            if job['company'] not in names:
                names.append(job['company'])
        return names
