#pragma once

#include "persista/core/chain.hpp"
#include "persista/core/checked.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/core/simplex.hpp"

#include "persista/algebra/dense.hpp"
#include "persista/algebra/prime_field.hpp"
#include "persista/algebra/smith.hpp"
#include "persista/algebra/sparse.hpp"

#include "persista/homology/betti.hpp"
#include "persista/homology/chain_complex.hpp"
#include "persista/homology/components.hpp"
#include "persista/homology/excision.hpp"
#include "persista/homology/integer.hpp"
#include "persista/homology/les.hpp"
#include "persista/homology/subdivision.hpp"

#include "persista/persistence/barcode.hpp"
#include "persista/persistence/modules.hpp"
#include "persista/persistence/oracle.hpp"
#include "persista/persistence/reduction.hpp"

#include "persista/io/barcode_io.hpp"
#include "persista/io/formats.hpp"
#include "persista/io/rips.hpp"
#include "persista/io/svg.hpp"
