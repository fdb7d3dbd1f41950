from free_knot_check.cli import run

run()
