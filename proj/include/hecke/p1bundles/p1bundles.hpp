#pragma once

#include "hecke/p1bundles/bundle.hpp"
#include "hecke/p1bundles/cohomology.hpp"
#include "hecke/p1bundles/oracle.hpp"
