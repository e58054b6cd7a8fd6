"""Word lists behind the tagger, lemmatizer and gazetteer.

Open-class entries are stored as base forms; inflected forms are generated
once at import time.  Everything here is read-only after load.
"""
from __future__ import annotations


def _words(block: str) -> list:
    return block.split()


CLOSED = {
    "DT": "the a an this that these those no each every all both some any another either neither half",
    "PRP": "i me you he him she her it we us they them myself yourself himself herself itself ourselves "
           "yourselves themselves mine yours hers ours theirs",
    "PRP$": "my your his her its our their",
    "WDT": "which whichever whatever",
    "WP": "who whom what whoever",
    "WP$": "whose",
    "WRB": "when where why how whenever wherever wherein whereupon",
    "CC": "and or but nor",
    "IN": "of in on at by for with from into onto upon under over through across about after before "
          "behind beside besides between beyond during except against along among around round toward "
          "towards within without down out off near like since until till though although because if "
          "whether while as than that lest unless whereas past above below beneath inside outside "
          "throughout amid up",
    "TO": "to",
    "MD": "will would shall should can could may might must",
    "EX": "there",
    "RB": "there not n't very so too also then now never always often soon again once twice here just only even "
          "still quite almost already away back forth ever perhaps indeed rather instead together "
          "upstairs downstairs yet far ago else thus therefore however otherwise hardly nearly scarcely "
          "merely straight afterwards meanwhile moreover abroad ahead aside apart home asleep alone "
          "much longer",
    "RBS": "most",
    "RBR": "more less",
    "JJS": "best worst least",
    "JJR": "better worse",
    "UH": "oh ah alas yes",
    "CD": "one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen "
          "twenty thirty forty fifty hundred thousand",
    "POS": "'s '",
}

# be / have / do are fully listed
AUXILIARIES = {
    "be": "VB", "am": "VBP", "are": "VBP", "is": "VBZ", "was": "VBD", "were": "VBD",
    "been": "VBN", "being": "VBG", "'m": "VBP", "'re": "VBP",
    "have": "VB", "has": "VBZ", "had": "VBD", "having": "VBG", "'ve": "VB",
    "do": "VB", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
}
AUX_LEMMA = {
    "am": "be", "are": "be", "is": "be", "was": "be", "were": "be", "been": "be", "being": "be",
    "'m": "be", "'re": "be", "has": "have", "had": "have", "having": "have", "'ve": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do", "'ll": "will", "'d": "would",
    "n't": "not", "'s": "'s",
}
BE_FORMS = {"be", "am", "are", "is", "was", "were", "been", "being", "'m", "'re"}
HAVE_FORMS = {"have", "has", "had", "having", "'ve"}

PRONOUN_LIKE_DT = {"these", "those", "all", "each", "both", "some", "any", "this", "that",
                   "another", "either", "neither", "half"}

IRREGULAR_VERBS = """
arise arose arisen  awake awoke awoken  bear bore borne  beat beat beaten  become became become
begin began begun  bend bent bent  behold beheld beheld  bid bade bidden  bind bound bound
bite bit bitten  bleed bled bled  blow blew blown  break broke broken  bring brought brought
build built built  burst burst burst  buy bought bought  catch caught caught
choose chose chosen  cling clung clung  come came come  creep crept crept  cut cut cut
deal dealt dealt  dig dug dug  draw drew drawn  dream dreamt dreamt  drink drank drunk
drive drove driven  dwell dwelt dwelt  eat ate eaten  fall fell fallen  feed fed fed
feel felt felt  fight fought fought  find found found  flee fled fled  fling flung flung
fly flew flown  forbid forbade forbidden  forget forgot forgotten  forgive forgave forgiven
forsake forsook forsaken  freeze froze frozen  get got got  give gave given  go went gone
grind ground ground  grow grew grown  hang hung hung  hear heard heard  hide hid hidden
hit hit hit  hold held held  hurt hurt hurt  keep kept kept  kneel knelt knelt
know knew known  lay laid laid  lead led led  leap leapt leapt  leave left left
lend lent lent  let let let  lie lay lain  light lit lit  lose lost lost  make made made
mean meant meant  meet met met  pay paid paid  put put put  read read read  ride rode ridden
ring rang rung  rise rose risen  run ran run  say said said  see saw seen  seek sought sought
sell sold sold  send sent sent  set set set  shake shook shaken  shine shone shone
shoot shot shot  show showed shown  shut shut shut  sing sang sung  sink sank sunk  sit sat sat
sleep slept slept  slide slid slid  speak spoke spoken  spend spent spent  spin spun spun
spring sprang sprung  stand stood stood  steal stole stolen  stick stuck stuck
sting stung stung  stride strode stridden  strike struck struck  swear swore sworn
sweep swept swept  swim swam swum  swing swung swung  take took taken  teach taught taught
tear tore torn  tell told told  think thought thought  throw threw thrown  tread trod trodden
understand understood understood  wake woke woken  wear wore worn  weave wove woven
weep wept wept  win won won  wind wound wound  wring wrung wrung  write wrote written
overcome overcame overcome  undertake undertook undertaken
"""

VERBS = _words("""
answer appear arrive ask ascend awaken bake bathe beg believe belong bless blind boil borrow
bow burn call carry cause change chase chop clean climb close comb comfort conduct cook count
crack cross crown cry dance dare decide deliver descend die dress drop dwell embrace enchant
enter escape fasten fear fetch fill finish fish float flow fold follow force free frighten
gather gaze glitter greet guard hammer happen harm harness hasten hate help hop hope hunt
hurry imprison jump kill kiss knock laugh learn lift like listen live load lock look love
marry milk mourn move murmur nod notice obey offer open order pass peep pick place plant play
please pluck point pour pray prepare promise pull punish push reach receive recognize refuse
rejoice remain remember reply rescue rest return roar roast roll rush sail save scream search
seem seize serve sew shout sigh smile sob spare stare start stay step stir stop stow strew
suffer sweat swoop talk thank touch travel trouble trust try turn visit wait walk wander want
wash watch weep wet whisper wish wonder work worry yield pass crack
""")

# stems whose final consonant doubles before -ed / -ing
DOUBLING = set(_words("""
beg chop drop hop nod plan rob shop shut skip slip step stir stop trip wet hug drag grab
pat pet rub sob spin swim tap wrap
"""))

NOUNS = _words("""
man woman child king queen prince princess son daughter brother sister father mother parent wife
husband girl boy maid waiting-maid maiden servant master mistress lord lady knight soldier giant
witch enchantress dwarf fairy frog toad bird duck dog horse lion bear wolf fox goose swan cat
mouse hen fish dragon merchant stranger huntsman hunter miller tailor shoemaker goldsmith helmsman
fisherman peasant farmer shepherd cook gardener companion friend person folk family bride
bridegroom groom fiance fiancee baby heart head hand eye face hair foot arm leg tear water well
river sea lake ship boat shore castle palace tower house hut cottage room chamber door window
bed table chair wall garden forest wood tree oak field meadow mountain hill road way path town
city village kingdom country land world sun moon star sky light night day morning evening winter
summer spring autumn year week time hour moment gold silver apple strawberry basket bucket broom
snow frock dress coat shirt apron ring crown sword carriage band chain feather iron stone glass
fire oven bench deliverance grief sadness joy pain despair wretchedness fear thing nothing
something everything anything part board order look ware pleasure power paw wing market
stepdaughter stepmother stepfather ostrich luck life death hunger thirst bread wine milk meat food
dinner supper turn watch rest word voice song name leave heaven god paper desert length vain
cracking washing dwelling bank key gate stair step floor roof corner dust earth grass flower rose
leaf branch root egg nest cup plate spoon knife bag sack purse coin jewel pearl cloth thread
needle spindle wheel cart mill church bell shadow storm rain wind cloud ice flame smoke
""")

IRREGULAR_NOUNS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot", "teeth": "tooth",
    "geese": "goose", "mice": "mouse", "people": "person", "oxen": "ox", "wives": "wife",
    "lives": "life", "knives": "knife", "leaves": "leaf", "loaves": "loaf", "wolves": "wolf",
    "calves": "calf", "halves": "half", "dwarves": "dwarf", "elves": "elf", "sheep": "sheep",
    "fish": "fish", "swan-geese": "swan-goose", "huntsmen": "huntsman", "fishermen": "fisherman",
    "helmsmen": "helmsman", "heavens": "heaven",
}

ADJECTIVES = _words("""
good bad beautiful pretty ugly little small big great large tall long short old young new fair
wicked evil venomous cruel kind gentle happy unhappy sad glad merry poor rich golden white
black red green blue dark bright cold warm hot clean dirty empty full free afraid awake alive dead
quick slow high low deep wide wild royal dear brave clever foolish wise strong weak blind tired
hungry sweet bitter heavy true false whole same other own such many few several last first next
safe strange modest quiet thick thin broad entire certain right wrong able magic unrecognizable
content dreadful terrible lovely lonely sick ill silent loud soft hard rough smooth sharp proud
humble honest faithless grand holy mighty ready sure wet dry fresh ripe sore wooden stone
""")

# words whose tag in these stories differs from the general-purpose lexicon
TAG_OVERRIDES = {
    "faithful": "NN",
    "everything": "NN", "nothing": "NN", "something": "NN", "anything": "NN",
    "dearest": "JJS",
    "highest": "JJS",
}

TEMPORAL = set(_words("""
morning evening night day noon midnight dawn dusk winter summer spring autumn year week month hour
moment today tomorrow yesterday monday tuesday wednesday thursday friday saturday sunday
"""))

ABBREVIATIONS = set(_words("mr mrs ms dr st prof sr jr vs etc mt capt col gen lt sgt rev"))

MALE_NOUNS = set(_words("""
man king prince son brother father husband boy servant master lord knight soldier huntsman hunter
miller tailor shoemaker goldsmith helmsman fisherman peasant farmer shepherd bridegroom groom
fiance dwarf giant stepfather merchant
"""))
FEMALE_NOUNS = set(_words("""
woman queen princess daughter sister mother wife girl maid maiden mistress lady witch enchantress
fairy bride fiancee stepdaughter stepmother
"""))
MALE_NAMES = set(_words("henry john benjamin hans jack peter ivan"))
FEMALE_NAMES = set(_words("rapunzel gretel mary masha cinderella"))

# (gender, number, person) of each pronoun form
PRONOUNS = {
    "i": ("unknown", "singular", 1), "me": ("unknown", "singular", 1), "my": ("unknown", "singular", 1),
    "myself": ("unknown", "singular", 1), "mine": ("unknown", "singular", 1),
    "we": ("unknown", "plural", 1), "us": ("unknown", "plural", 1), "our": ("unknown", "plural", 1),
    "ourselves": ("unknown", "plural", 1),
    "you": ("unknown", "unknown", 2), "your": ("unknown", "unknown", 2),
    "yourself": ("unknown", "singular", 2), "yours": ("unknown", "unknown", 2),
    "he": ("male", "singular", 3), "him": ("male", "singular", 3), "his": ("male", "singular", 3),
    "himself": ("male", "singular", 3),
    "she": ("female", "singular", 3), "her": ("female", "singular", 3),
    "herself": ("female", "singular", 3), "hers": ("female", "singular", 3),
    "it": ("neuter", "singular", 3), "its": ("neuter", "singular", 3),
    "itself": ("neuter", "singular", 3),
    "they": ("unknown", "plural", 3), "them": ("unknown", "plural", 3),
    "their": ("unknown", "plural", 3), "themselves": ("unknown", "plural", 3),
    "who": ("unknown", "unknown", 3), "whom": ("unknown", "unknown", 3),
    "which": ("neuter", "unknown", 3), "whose": ("unknown", "unknown", 3),
}

SPEECH_VERBS = set(_words("say cry answer ask reply call shout exclaim whisper scream murmur think"))


_IRREGULAR_SINGULARS = set(IRREGULAR_NOUNS.values()) - {"heaven", "fish", "sheep"}


def _inflect_verb(base: str) -> tuple:
    """(3sg, past, gerund) for a regular verb."""
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        stem_ing, stem_ed = base[:-1] + "ing", base + "d"
    elif base.endswith("y") and base[-2:-1] not in "aeiou":
        stem_ing, stem_ed = base + "ing", base[:-1] + "ied"
    elif base in DOUBLING:
        stem_ing, stem_ed = base + base[-1] + "ing", base + base[-1] + "ed"
    else:
        stem_ing, stem_ed = base + "ing", base + "ed"
    if base.endswith(("s", "sh", "ch", "x", "z", "o")):
        third = base + "es"
    elif base.endswith("y") and base[-2:-1] not in "aeiou":
        third = base[:-1] + "ies"
    else:
        third = base + "s"
    return third, stem_ed, stem_ing


def _pluralize(noun: str) -> str:
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2:-1] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def _build():
    """Map word form -> ordered list of (tag, lemma); first entry is the default reading."""
    forms: dict = {}

    def add(form, tag, lemma):
        entry = forms.setdefault(form, [])
        if (tag, lemma) not in entry:
            entry.append((tag, lemma))

    for tag, block in CLOSED.items():
        for w in block.split():
            add(w, tag, w)
    for w, tag in AUXILIARIES.items():
        add(w, tag, AUX_LEMMA.get(w, w))
    add("'ll", "MD", "will")
    add("'d", "MD", "would")
    for w in NOUNS:
        add(w, "NN", w)
    for plural, single in IRREGULAR_NOUNS.items():
        add(plural, "NNS", single)
    for w in NOUNS:
        plural = _pluralize(w)
        if w not in _IRREGULAR_SINGULARS:
            add(plural, "NNS", w)
    irregular = {}
    parts = IRREGULAR_VERBS.split()
    for i in range(0, len(parts), 3):
        base, past, participle = parts[i:i + 3]
        irregular[base] = (past, participle)
    for base in sorted(set(VERBS) | set(irregular)):
        third, ed, ing = _inflect_verb(base)
        add(base, "VB", base)
        add(third, "VBZ", base)
        add(ing, "VBG", base)
        past, participle = irregular.get(base, (ed, ed))
        add(past, "VBD", base)
        add(participle, "VBN", base)
    for w in ADJECTIVES:
        add(w, "JJ", w)
    for w, tag in TAG_OVERRIDES.items():
        forms[w] = [(tag, w)] + [e for e in forms.get(w, []) if e[0] != tag]
    return forms


FORMS = _build()
VERB_BASES = {lemma for entries in FORMS.values() for tag, lemma in entries if tag == "VB"}
NOUN_BASES = set(NOUNS)
