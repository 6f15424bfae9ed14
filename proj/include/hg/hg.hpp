#pragma once

#include "hg/core/check_report.hpp"
#include "hg/core/element_set.hpp"
#include "hg/core/errors.hpp"
#include "hg/core/hypergroup.hpp"
#include "hg/core/relational.hpp"

#include "hg/morph/hom.hpp"
#include "hg/morph/iso.hpp"
#include "hg/morph/kernel.hpp"
#include "hg/morph/morphism.hpp"

#include "hg/construct/builders.hpp"
#include "hg/construct/diagram.hpp"
#include "hg/construct/quotient.hpp"
#include "hg/construct/subcarrier.hpp"

#include "hg/cat/hom_structure.hpp"
#include "hg/cat/universal.hpp"

#include "hg/enum/enumerate.hpp"
#include "hg/enum/search.hpp"

#include "hg/io/document.hpp"
