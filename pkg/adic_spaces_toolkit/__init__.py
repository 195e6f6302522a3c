package_name = 'adic_spaces_toolkit'
path         = __path__[0]
