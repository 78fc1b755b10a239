#pragma once

#include "autkum/error.hpp"

#include "autkum/exactfield/ext_field.hpp"
#include "autkum/exactfield/field.hpp"
#include "autkum/exactfield/laurent.hpp"
#include "autkum/exactfield/poly.hpp"
#include "autkum/exactfield/prime_field.hpp"
#include "autkum/exactfield/ratfunc.hpp"
#include "autkum/exactfield/text.hpp"

#include "autkum/ellcurve/legendre.hpp"
#include "autkum/ellcurve/supersingular.hpp"
#include "autkum/ellcurve/text.hpp"

#include "autkum/curvelattice/blowup.hpp"
#include "autkum/curvelattice/config.hpp"
#include "autkum/curvelattice/kodaira.hpp"
#include "autkum/curvelattice/kummer.hpp"
#include "autkum/curvelattice/rank.hpp"
#include "autkum/curvelattice/text.hpp"

#include "autkum/lineaction/affine.hpp"
#include "autkum/lineaction/differential.hpp"
#include "autkum/lineaction/mw_action.hpp"
#include "autkum/lineaction/word.hpp"

#include "autkum/fgcert/schreier.hpp"
#include "autkum/fgcert/span.hpp"

#include "autkum/verifier/pipeline.hpp"
#include "autkum/verifier/report.hpp"
