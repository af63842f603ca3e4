#pragma once

#include "wordlab/abelian_toy.hpp"
#include "wordlab/automorphisms.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/config.hpp"
#include "wordlab/cyclotomic.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/haar_mc.hpp"
#include "wordlab/invariant_functions.hpp"
#include "wordlab/parallel.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/representations.hpp"
#include "wordlab/tuple_orbits.hpp"
#include "wordlab/whitehead.hpp"
#include "wordlab/word_measures.hpp"
#include "wordlab/words.hpp"
