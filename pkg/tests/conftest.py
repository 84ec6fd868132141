from hypothesis import settings

# exact arithmetic has uneven per-example cost; the default deadline misfires
settings.register_profile("nsl", deadline=None, max_examples=100)
settings.load_profile("nsl")
