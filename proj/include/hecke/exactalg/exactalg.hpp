#pragma once

#include "hecke/exactalg/field.hpp"
#include "hecke/exactalg/poly.hpp"
#include "hecke/exactalg/ratfunc.hpp"
#include "hecke/exactalg/laurent.hpp"
#include "hecke/exactalg/matrix.hpp"
#include "hecke/exactalg/hermite.hpp"
#include "hecke/exactalg/birkhoff.hpp"
#include "hecke/exactalg/random.hpp"
#include "hecke/exactalg/roots.hpp"
