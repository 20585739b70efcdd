#ifndef SCDIAM_SCDIAM_HPP
#define SCDIAM_SCDIAM_HPP

#include "scdiam/bounds.hpp"
#include "scdiam/coloring.hpp"
#include "scdiam/complex.hpp"
#include "scdiam/constructions.hpp"
#include "scdiam/diameter.hpp"
#include "scdiam/error.hpp"
#include "scdiam/io.hpp"
#include "scdiam/math.hpp"
#include "scdiam/pipeline.hpp"
#include "scdiam/quotient.hpp"
#include "scdiam/random.hpp"

#endif
