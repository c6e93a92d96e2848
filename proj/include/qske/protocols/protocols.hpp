#pragma once

#include "qske/protocols/keys.hpp"
#include "qske/protocols/kind1.hpp"
#include "qske/protocols/kind2.hpp"
#include "qske/protocols/kind3.hpp"
#include "qske/protocols/kind12.hpp"
#include "qske/protocols/kind16.hpp"
#include "qske/protocols/kind28.hpp"
#include "qske/protocols/kind32.hpp"
#include "qske/protocols/lift.hpp"
#include "qske/protocols/modmath.hpp"
