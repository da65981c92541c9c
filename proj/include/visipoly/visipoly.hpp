#pragma once

// Exact mutual-visibility combinatorics on small graphs: family
// constructors, pruned enumeration of mutual-visibility sets, the
// visibility polynomial, separator machinery, and closed forms for the
// wheel, helm, friendship, shell and bow families.

#include "visipoly/bigint.hpp"
#include "visipoly/closed_forms.hpp"
#include "visipoly/enumeration.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"
#include "visipoly/separators.hpp"
#include "visipoly/vertex_set.hpp"
#include "visipoly/visibility.hpp"
