#pragma once

#include "pezzo/bigint.hpp"
#include "pezzo/combine.hpp"
#include "pezzo/error.hpp"
#include "pezzo/family.hpp"
#include "pezzo/floor_diagram.hpp"
#include "pezzo/gw.hpp"
#include "pezzo/lattice.hpp"
#include "pezzo/sign.hpp"
#include "pezzo/store.hpp"
#include "pezzo/tables.hpp"
#include "pezzo/welschinger.hpp"
