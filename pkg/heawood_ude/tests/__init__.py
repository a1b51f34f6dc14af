'''
__init__.py
'''
