#pragma once

#include "facet/error.hpp"
#include "facet/embedding.hpp"
#include "facet/peg.hpp"
#include "facet/surgery.hpp"
#include "facet/generators.hpp"
#include "facet/facial_coloring.hpp"
#include "facet/chromatic.hpp"
#include "facet/choosability.hpp"
#include "facet/nullstellensatz.hpp"
#include "facet/reducibility.hpp"
#include "facet/structure.hpp"
#include "facet/discharging.hpp"
