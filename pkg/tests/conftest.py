from hypothesis import strategies as st

from modular_braid.words import BraidWord, FreeWord, GenWord


def word_strategy(cls, max_length=20):
    letter = st.tuples(st.sampled_from(cls.alphabet), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_length).map(cls)


gen_words = word_strategy(GenWord)
braid_words = word_strategy(BraidWord)
free_words = word_strategy(FreeWord, 12)
