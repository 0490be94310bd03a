#pragma once

#include <gammalink/equivalence.hpp>
#include <gammalink/io.hpp>
#include <gammalink/matrix.hpp>
#include <gammalink/milnor.hpp>
#include <gammalink/numeric.hpp>
#include <gammalink/poly.hpp>
#include <gammalink/ratfn.hpp>
#include <gammalink/seifert.hpp>
#include <gammalink/sequence.hpp>
#include <gammalink/series.hpp>
#include <gammalink/transforms.hpp>
