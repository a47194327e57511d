#pragma once

#include "qfock/laurent.hpp"
#include "qfock/combinatorics.hpp"
#include "qfock/wedge.hpp"
#include "qfock/fock.hpp"
#include "qfock/involution.hpp"
#include "qfock/canonical.hpp"
#include "qfock/hecke.hpp"
#include "qfock/io.hpp"
