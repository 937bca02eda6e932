#pragma once

// Link polynomial invariants, Vassiliev sequences, and the exact/convergent
// reconstruction machinery connecting them.

#include "vknots/bracket.hpp"
#include "vknots/braid.hpp"
#include "vknots/complex_hp.hpp"
#include "vknots/config.hpp"
#include "vknots/corpus.hpp"
#include "vknots/fox.hpp"
#include "vknots/generating.hpp"
#include "vknots/homfly.hpp"
#include "vknots/jones.hpp"
#include "vknots/kauffman_q.hpp"
#include "vknots/laurent.hpp"
#include "vknots/pd_code.hpp"
#include "vknots/pi_poly.hpp"
#include "vknots/rational.hpp"
#include "vknots/real_hp.hpp"
#include "vknots/reconstruct.hpp"
#include "vknots/sinc_series.hpp"
#include "vknots/tables.hpp"
#include "vknots/twist.hpp"
#include "vknots/two_var.hpp"
#include "vknots/vandermonde.hpp"
#include "vknots/vassiliev.hpp"
