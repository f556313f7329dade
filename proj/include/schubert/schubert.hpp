#pragma once

#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/qfactor.hpp"
#include "schubert/hfraction.hpp"
#include "schubert/strata.hpp"
#include "schubert/identities.hpp"
#include "schubert/ihsolver.hpp"
#include "schubert/sweeper.hpp"
#include "schubert/json_writer.hpp"
#include "schubert/report.hpp"
