# # The expression language
#
# Scripts declare a universe with directives, then bind and print values.

from mtop.dsl import format_value, run_script

source = r"""
#elements x,y,z
#omega 4
U  = {4/x,3/y,2/z}
M1 = {4/x,3/y}
M2 = {2/x,3/y}
phi(M1 | M2)
phi(M1) | phi(M2)
compl(phi(M2), U)       -- relative to phi(U)
nat \ phi(M2)           -- cofinite
check1(M1, M2, U)
check3(M2, U, phiU, relative)
"""

outputs, env = run_script(source)
for name, value in outputs:
    print(f"{name or '_'} = {format_value(value, unicode=True)}")
