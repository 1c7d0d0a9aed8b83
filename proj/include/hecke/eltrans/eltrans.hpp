#pragma once

#include "hecke/eltrans/principal.hpp"
#include "hecke/eltrans/normal_form.hpp"
#include "hecke/eltrans/quot.hpp"
#include "hecke/eltrans/random.hpp"
