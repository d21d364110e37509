#pragma once

#include "krammer/braid.hpp"
#include "krammer/chains.hpp"
#include "krammer/form.hpp"
#include "krammer/fraction.hpp"
#include "krammer/io.hpp"
#include "krammer/laurent.hpp"
#include "krammer/lkrep.hpp"
#include "krammer/matrix.hpp"
#include "krammer/numeric.hpp"
#include "krammer/parallel.hpp"
