#pragma once

// convenience include for the whole library

#include "hoops/associativity.hpp"
#include "hoops/constructions.hpp"
#include "hoops/core.hpp"
#include "hoops/decomposition.hpp"
#include "hoops/enumeration.hpp"
#include "hoops/exact.hpp"
#include "hoops/filters.hpp"
#include "hoops/io.hpp"
#include "hoops/morphisms.hpp"
