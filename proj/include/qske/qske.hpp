#pragma once

#include "qske/analysis.hpp"
#include "qske/bitstring.hpp"
#include "qske/io.hpp"
#include "qske/linalg.hpp"
#include "qske/protocols/protocols.hpp"
#include "qske/random.hpp"
#include "qske/report.hpp"
#include "qske/sim.hpp"
#include "qske/taxonomy.hpp"
