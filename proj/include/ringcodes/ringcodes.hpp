#pragma once

#include "ringcodes/audit.hpp"
#include "ringcodes/bigint.hpp"
#include "ringcodes/code_builder.hpp"
#include "ringcodes/code_families.hpp"
#include "ringcodes/cyclic_qc.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/gray_map.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/serialize.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/tower_ring.hpp"
#include "ringcodes/verify.hpp"
#include "ringcodes/zmodule.hpp"
