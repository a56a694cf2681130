"""__init__.py for performance tests"""
