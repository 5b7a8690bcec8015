from sentitrend.corpus import SentimentLabel
from sentitrend.preprocess import Document, LengthCategory

NEG, POS = SentimentLabel.NEGATIVE, SentimentLabel.POSITIVE


def make_doc(tokens, label=POS, tweet_id=0, timestamp=None):
    return Document(tweet_id, label, tuple(tokens), 10, len(tokens),
                    LengthCategory.VERY_SHORT, LengthCategory.VERY_SHORT, timestamp)


def labeled(pairs):
    """Documents from (tokens, label) pairs with sequential ids."""
    return [make_doc(toks, lab, i) for i, (toks, lab) in enumerate(pairs)]


# acceptance outcomes, printed by the terminal summary hook in conftest
ACCEPTANCE_RESULTS = []
