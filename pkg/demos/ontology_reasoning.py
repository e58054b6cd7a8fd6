"""Classify the bundled folktale ontology and realize a few individuals."""
from folkchar.ontology import Atomic, folktale_ontology, is_subsumed, realize

kb = folktale_ontology()
print("Enchantress == Witch:",
      is_subsumed(kb, Atomic("Enchantress"), Atomic("Witch"))
      and is_subsumed(kb, Atomic("Witch"), Atomic("Enchantress")))

kb.add_individual("henry")
kb.assert_concept("henry", Atomic("Helmsman"))
kb.add_individual("princess")
kb.assert_concept("princess", Atomic("Daughter"))
kb.add_individual("king")
kb.assert_concept("king", Atomic("King"))
kb.assert_role("hasChild", "king", "princess")

for ind in ("henry", "princess", "king"):
    print(ind, sorted(realize(kb, ind)))
