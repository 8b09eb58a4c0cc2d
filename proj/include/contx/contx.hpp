#pragma once

// Umbrella header.

#include <contx/bigint.hpp>
#include <contx/bounds.hpp>
#include <contx/continuant.hpp>
#include <contx/errors.hpp>
#include <contx/extremal.hpp>
#include <contx/interval.hpp>
#include <contx/oracle.hpp>
#include <contx/rational.hpp>
#include <contx/reflect.hpp>
#include <contx/sequence.hpp>
