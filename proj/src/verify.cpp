namespace dbcalc {}
