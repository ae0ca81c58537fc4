#pragma once

#include "khr/element_set.hpp"
#include "khr/errors.hpp"
#include "khr/format.hpp"
#include "khr/fractions.hpp"
#include "khr/generators.hpp"
#include "khr/ideals.hpp"
#include "khr/morphisms.hpp"
#include "khr/quotients.hpp"
#include "khr/structure.hpp"
#include "khr/suite.hpp"
#include "khr/transport.hpp"
#include "khr/universal.hpp"
#include "khr/validate.hpp"
#include "khr/verdict.hpp"
