#pragma once

#include "eupade/certificates.hpp"
#include "eupade/constants.hpp"
#include "eupade/logbound.hpp"
#include "eupade/oracle.hpp"
#include "eupade/pade.hpp"
#include "eupade/padic.hpp"
#include "eupade/params.hpp"
#include "eupade/poly.hpp"
#include "eupade/primes.hpp"
#include "eupade/rational.hpp"
#include "eupade/report.hpp"
