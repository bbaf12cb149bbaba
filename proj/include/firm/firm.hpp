#ifndef FIRM_FIRM_HPP
#define FIRM_FIRM_HPP

#include "firm/canonical.hpp"
#include "firm/certify.hpp"
#include "firm/cover_graph.hpp"
#include "firm/errors.hpp"
#include "firm/families.hpp"
#include "firm/matrix.hpp"
#include "firm/pattern.hpp"
#include "firm/rect.hpp"
#include "firm/search.hpp"
#include "firm/solvers.hpp"
#include "firm/verdict.hpp"

#endif
