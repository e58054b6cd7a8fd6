"""Reference data used by the fixture and acceptance tests."""

# (sentence, arg1, rel, arg2, confidence, pos tags, chunk tags); row 4 is exempt
REFERENCE_TRIPLETS = [
    ("Good heavens, said the girl, no strawberries grow in winter.",
     "no strawberries", "grow in", "winter", 0.505,
     "JJ NNS , VBD DT NN , DT NNS VB IN NN .",
     "B-NP I-NP O B-VP B-NP I-NP O B-NP I-NP"),
    ("The king's daughter began to cry , for daughter was afraid of the cold frog which "
     "daughter did not like to touch, and which was now to sleep in daughter pretty, clean "
     "little bed.",
     "daughter", "was afraid of", "the cold frog", 0.691, None, None),
    ("When everything was stowed on board a ship, faithful John put on the dress of a "
     "merchant, and the king was forced to do the same in order to make king quite "
     "unrecognizable.",
     "John", "put on", "the dress of a merchant", 0.876, None, None),
    ("Sons each kept watch in turn, and sat on the highest oak and looked towards the tower.",
     "each", "kept watch in", "turn", 0.880, None, None),
    ("Rapunzel grew into the most beautiful child under the sun.",
     "Rapunzel", "grew into", "the most beautiful child", 0.830,
     "NNP VBD IN DT RBS JJ NN IN DT NN .",
     "B-NP B-VP B-PP B-NP I-NP I-NP I-NP B-PP B-NP I-NP O"),
    ("The king's son ascended, but instead of finding son dearest rapunzel, son found the "
     "enchantress, who gazed at son with wicked and venomous looks.",
     "the enchantress", "gazed at", "son", 0.586, None, None),
]

HENRY_REFERENCE_ITEMS = [
    "Henry master was changed into a frog",
    "Henry had caused three iron bands",
    "faithful Henry helped bands",
    "bands placed Henry",
    "Henry was full of joy",
    "the bands were springing from the heart of faithful Henry",
]

REFERENCE_ACCURACIES = {
    "The Magic Swan-Geese": 75, "The Frog King": 62, "The King's Son who Feared Nothing": 76,
    "Faithful John": 63, "The Twelve Brothers": 65, "Rapunzel": 74,
    "The Three Little Men in the Woods": 73,
}
REFERENCE_ACCURACY_MEAN = 70

STOPWORDS = frozenset("""
a an the of to in into on at by for from with and or but so that this these those it its
is was were be been had has have did do does not no as than then there here which who
""".split())


def content_words(text: str) -> set:
    words = {w.strip(".,;:!?'\"").lower() for w in text.split()}
    return {w for w in words if w and w not in STOPWORDS}


def jaccard(a: str, b: str) -> float:
    x, y = content_words(a), content_words(b)
    return len(x & y) / len(x | y) if x | y else 1.0


def matched_items(items, references, threshold=0.5) -> list:
    """Greedy one-to-one matching of report items to reference rows by content-word Jaccard."""
    pairs = sorted(((jaccard(i, r), n, m) for n, i in enumerate(items)
                    for m, r in enumerate(references)), reverse=True)
    used_i, used_r, out = set(), set(), []
    for score, n, m in pairs:
        if score < threshold:
            break
        if n in used_i or m in used_r:
            continue
        used_i.add(n)
        used_r.add(m)
        out.append((items[n], references[m], score))
    return out
