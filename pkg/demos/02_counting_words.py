"""
How many closed geodesics of word length L?
===========================================

Closed geodesics on the pants correspond to cyclically reduced words in
a, A = a^-1, b, B = b^-1, counted up to rotation.  The counts grow like 3^L.
"""
from pants_spectrum import count_classes, count_strings, enumerate_classes, parse_word, canonical_form

# strings: cyclically reduced words with a fixed starting point
# closed form 3^L + 2 + (-1)^L from the trace of the 4x4 transfer matrix
for L in range(1, 9):
    print(L, count_strings(L), 3**L + 2 + (-1) ** L, count_classes(L))

# the classes themselves, each shown by its least rotation (a < A < b < B)
print([str(w) for w in enumerate_classes(3)])

# a rotation lands on the same class representative
w = parse_word("bAbab")
print(w, "->", canonical_form(w), "==", canonical_form(w.rotate(2)))

# exhaustive enumeration stays practical up to about L = 16
print("L = 14:", count_classes(14), "classes out of", count_strings(14), "strings")
print("L = 100:", count_classes(100))
