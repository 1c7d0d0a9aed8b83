#pragma once

#include "hecke/hilbquot/census.hpp"
#include "hecke/hilbquot/zscheme.hpp"
#include "hecke/hilbquot/random.hpp"
