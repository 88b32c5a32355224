"""Walk through insertion of the word bacaabca."""

from sylvmon import sylvester, trees, words
from sylvmon.render import render_ascii

w = words.parse_word("bacaabca")
s = words.standardize(w)
p, q = trees.p_symbol(w), trees.q_symbol(w)

print("word        ", words.format_word(w))
print("std         ", words.format_permutation(s))
print("std inverse ", words.format_permutation(words.inverse(s)))
print("P           ", trees.serialize_tree(p, letters=True))
print(render_ascii(p, letters=True))
print("Q           ", trees.serialize_tree(q))
print(render_ascii(q))
print("tree-word   ", words.format_word(trees.postfix_reading(p)))
cls = sylvester.sylvester_class(w)
print("class size  ", len(cls), "of", words.count_rearrangements(w), "rearrangements")
