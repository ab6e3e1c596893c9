"""
URL configuration for Uptrans project.

Only the admin site is routed; it browses saved runs and their item reports.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
