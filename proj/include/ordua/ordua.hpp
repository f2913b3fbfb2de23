// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ordua/bits.hpp"
#include "ordua/config.hpp"
#include "ordua/corpus.hpp"
#include "ordua/duality.hpp"
#include "ordua/error.hpp"
#include "ordua/filters.hpp"
#include "ordua/free.hpp"
#include "ordua/io.hpp"
#include "ordua/isomorphism.hpp"
#include "ordua/morphism.hpp"
#include "ordua/oracle.hpp"
#include "ordua/poset.hpp"
#include "ordua/set_family.hpp"
#include "ordua/space.hpp"
#include "ordua/structure.hpp"
