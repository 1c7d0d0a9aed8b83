#pragma once

// Everything except the command-line layer (hecke/cli), which needs the vendored JSON header.
#include "hecke/exactalg/exactalg.hpp"
#include "hecke/p1bundles/p1bundles.hpp"
#include "hecke/eltrans/eltrans.hpp"
#include "hecke/hilbquot/hilbquot.hpp"
#include "hecke/spans/spans.hpp"
#include "hecke/brillnoether/brillnoether.hpp"
