// Umbrella header: pulls in the whole library.
#pragma once

#include "dualnorm/rational.hpp"
#include "dualnorm/linalg.hpp"
#include "dualnorm/smith.hpp"
#include "dualnorm/unit_value.hpp"
#include "dualnorm/root_datum.hpp"
#include "dualnorm/torus.hpp"
#include "dualnorm/parameters.hpp"
#include "dualnorm/packets.hpp"
#include "dualnorm/component_group.hpp"
#include "dualnorm/pairing.hpp"
#include "dualnorm/factor_atoms.hpp"
#include "dualnorm/factor_rules.hpp"
#include "dualnorm/factor_defs.hpp"
#include "dualnorm/factor_random.hpp"
#include "dualnorm/factor_theorems.hpp"
#include "dualnorm/harness.hpp"
#include "dualnorm/catalog.hpp"
