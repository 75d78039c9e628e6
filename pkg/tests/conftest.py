from hypothesis import settings

settings.register_profile("fibperm", deadline=None, max_examples=60)
settings.load_profile("fibperm")
