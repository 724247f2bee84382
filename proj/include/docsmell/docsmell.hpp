#pragma once

// Umbrella header for the whole library.

#include "docsmell/corpus.hpp"
#include "docsmell/errors.hpp"
#include "docsmell/eval.hpp"
#include "docsmell/features.hpp"
#include "docsmell/javadoc.hpp"
#include "docsmell/learn.hpp"
#include "docsmell/metrics.hpp"
#include "docsmell/model_io.hpp"
#include "docsmell/random.hpp"
#include "docsmell/rules.hpp"
